class LinkedList {
    public static void main(String[] a) {
        System.out.println(new LL().start());
    }
}

class Node {
    int value;
    boolean hasNext;
    Node next;

    public int getValue() {
        return value;
    }

    public boolean getHasNext() {
        return hasNext;
    }

    public Node getNext() {
        return next;
    }

    public int setValue(int v) {
        value = v;
        return 0;
    }

    public int setNext(Node n) {
        next = n;
        hasNext = true;
        return 0;
    }
}

class LL {
    public int start() {
        Node first;
        Node second;
        Node third;
        Node cur;
        int aux;
        int count;
        first = new Node();
        second = new Node();
        third = new Node();
        aux = first.setValue(5);
        aux = second.setValue(8);
        aux = third.setValue(13);
        aux = first.setNext(second);
        aux = second.setNext(third);
        System.out.println(this.sum(first));
        cur = first;
        System.out.println(cur.getValue());
        while (cur.getHasNext()) {
            cur = cur.getNext();
            System.out.println(cur.getValue());
        }
        count = this.countNodes(first);
        System.out.println(count);
        return 0;
    }

    public int sum(Node head) {
        int total;
        Node cur;
        total = head.getValue();
        cur = head;
        while (cur.getHasNext()) {
            cur = cur.getNext();
            total = total + cur.getValue();
        }
        return total;
    }

    public int countNodes(Node head) {
        int n;
        Node cur;
        n = 1;
        cur = head;
        while (cur.getHasNext()) {
            cur = cur.getNext();
            n = n + 1;
        }
        return n;
    }
}
