class TypeCycle {
    public static void main(String[] a) {
        System.out.println(new First().run());
    }
}

class First extends Second {
    public int run() {
        return 1;
    }
}

class Second extends First {
    public int helper() {
        return 2;
    }
}
