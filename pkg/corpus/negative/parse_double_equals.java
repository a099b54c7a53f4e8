class ParseDoubleEquals {
    public static void main(String[] a) {
        System.out.println(new Cmp().check(3));
    }
}

class Cmp {
    public int check(int n) {
        int r;
        if (n == 3)
            r = 1;
        else
            r = 0;
        return r;
    }
}
