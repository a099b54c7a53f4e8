class TypeUndeclaredVar {
    public static void main(String[] a) {
        System.out.println(new Worker().run());
    }
}

class Worker {
    public int run() {
        int x;
        x = y + 1;
        return x;
    }
}
