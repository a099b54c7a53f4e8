class BinarySearch {
    public static void main(String[] a) {
        System.out.println(new BS().start(20));
    }
}

class BS {
    int[] numbers;
    int size;

    public int start(int sz) {
        int aux;
        aux = this.init(sz);
        if (this.search(8)) System.out.println(1); else System.out.println(0);
        if (this.search(22)) System.out.println(1); else System.out.println(0);
        if (this.search(41)) System.out.println(1); else System.out.println(0);
        if (this.search(58)) System.out.println(1); else System.out.println(0);
        if (this.search(60)) System.out.println(1); else System.out.println(0);
        return 999;
    }

    public int init(int sz) {
        int j;
        size = sz;
        numbers = new int[sz];
        j = 0;
        while (j < size) {
            numbers[j] = 20 + j + j;
            j = j + 1;
        }
        return 0;
    }

    public boolean search(int num) {
        boolean found;
        int lo;
        int hi;
        int mid;
        found = false;
        lo = 0;
        hi = size - 1;
        while (lo < hi + 1 && !found) {
            mid = this.halve(lo + hi);
            if (num < numbers[mid])
                hi = mid - 1;
            else if (numbers[mid] < num)
                lo = mid + 1;
            else
                found = true;
        }
        return found;
    }

    public int halve(int n) {
        int half;
        half = 0;
        while (half + half + 1 < n)
            half = half + 1;
        return half;
    }
}
