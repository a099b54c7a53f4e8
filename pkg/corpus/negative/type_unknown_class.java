class TypeUnknownClass {
    public static void main(String[] a) {
        System.out.println(new Ghost().run());
    }
}

class Worker {
    public int run() {
        return 1;
    }
}
