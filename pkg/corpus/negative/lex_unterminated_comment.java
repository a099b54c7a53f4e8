class LexUnterminatedComment {
    public static void main(String[] a) {
        /* this comment never ends
        System.out.println(1);
    }
}
