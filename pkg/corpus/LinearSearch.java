class LinearSearch {
    public static void main(String[] a) {
        System.out.println(new LS().start(10));
    }
}

class LS {
    int[] elements;
    int size;

    public int start(int sz) {
        int aux;
        aux = this.init(sz);
        System.out.println(this.search(9));
        System.out.println(this.search(12));
        System.out.println(this.search(17));
        System.out.println(this.search(50));
        return 55;
    }

    public int init(int sz) {
        int j;
        size = sz;
        elements = new int[sz];
        j = 0;
        while (j < size) {
            elements[j] = 2 * j + 3;
            j = j + 1;
        }
        return 0;
    }

    public int search(int num) {
        int j;
        int found;
        found = 0;
        j = 0;
        while (j < size) {
            if (this.equal(elements[j], num))
                found = 1;
            else
                found = found;
            j = j + 1;
        }
        return found;
    }

    public boolean equal(int x, int y) {
        boolean ret;
        if (x < y)
            ret = false;
        else if (y < x)
            ret = false;
        else
            ret = true;
        return ret;
    }
}
