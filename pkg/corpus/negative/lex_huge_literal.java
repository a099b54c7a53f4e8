class LexHugeLiteral {
    public static void main(String[] a) {
        System.out.println(4611686018427387904);
    }
}
