class TypeThisInMain {
    public static void main(String[] a) {
        System.out.println(this.run());
    }
}

class Worker {
    public int run() {
        return 1;
    }
}
