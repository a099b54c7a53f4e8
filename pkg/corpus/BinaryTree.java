class BinaryTree {
    public static void main(String[] a) {
        System.out.println(new BT().start());
    }
}

class Tree {
    int value;
    boolean hasLeft;
    boolean hasRight;
    Tree left;
    Tree right;

    public int setValue(int v) {
        value = v;
        return 0;
    }

    public int insert(int v) {
        int aux;
        if (v < value) {
            if (hasLeft)
                aux = left.insert(v);
            else {
                left = new Tree();
                aux = left.setValue(v);
                hasLeft = true;
            }
        } else {
            if (hasRight)
                aux = right.insert(v);
            else {
                right = new Tree();
                aux = right.setValue(v);
                hasRight = true;
            }
        }
        return 0;
    }

    public int printInorder() {
        int aux;
        if (hasLeft)
            aux = left.printInorder();
        else
            aux = 0;
        System.out.println(value);
        if (hasRight)
            aux = right.printInorder();
        else
            aux = 0;
        return 0;
    }

    public int contains(int v) {
        int result;
        if (v < value) {
            if (hasLeft)
                result = left.contains(v);
            else
                result = 0;
        } else {
            if (value < v) {
                if (hasRight)
                    result = right.contains(v);
                else
                    result = 0;
            } else
                result = 1;
        }
        return result;
    }
}

class BT {
    public int start() {
        Tree root;
        int aux;
        root = new Tree();
        aux = root.setValue(16);
        aux = root.insert(8);
        aux = root.insert(24);
        aux = root.insert(4);
        aux = root.insert(12);
        aux = root.insert(20);
        aux = root.insert(28);
        aux = root.insert(14);
        aux = root.printInorder();
        System.out.println(100000000);
        System.out.println(root.contains(24));
        System.out.println(root.contains(12));
        System.out.println(root.contains(50));
        System.out.println(root.contains(5));
        return 0;
    }
}
