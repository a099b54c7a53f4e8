class TypeBadArgCount {
    public static void main(String[] a) {
        System.out.println(new Worker().add(1, 2, 3));
    }
}

class Worker {
    public int add(int x, int y) {
        return x + y;
    }
}
