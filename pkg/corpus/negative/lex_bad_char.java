class LexBadChar {
    public static void main(String[] a) {
        System.out.println(4 # 2);
    }
}
