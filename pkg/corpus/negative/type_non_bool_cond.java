class TypeNonBoolCond {
    public static void main(String[] a) {
        System.out.println(new Worker().run());
    }
}

class Worker {
    public int run() {
        int x;
        x = 0;
        while (x) {
            x = x + 1;
        }
        return x;
    }
}
