class ParseMissingElse {
    public static void main(String[] a) {
        if (1 < 2)
            System.out.println(1);
    }
}
