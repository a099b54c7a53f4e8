class TypeBadOperand {
    public static void main(String[] a) {
        System.out.println(new Worker().run());
    }
}

class Worker {
    public int run() {
        int x;
        x = true + 1;
        return x;
    }
}
