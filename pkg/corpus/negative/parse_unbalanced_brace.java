class ParseUnbalancedBrace {
    public static void main(String[] a) {
        System.out.println(7);
    }
