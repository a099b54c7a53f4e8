class TypeBadOverride {
    public static void main(String[] a) {
        System.out.println(new Child().calc(2));
    }
}

class Base {
    public int calc(int n) {
        return n;
    }
}

class Child extends Base {
    public int calc(boolean flag) {
        return 1;
    }
}
