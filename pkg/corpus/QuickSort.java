class QuickSort {
    public static void main(String[] a) {
        System.out.println(new QS().start(10));
    }
}

class QS {
    int[] numbers;
    int size;

    public int start(int sz) {
        int aux;
        aux = this.init(sz);
        aux = this.printAll();
        System.out.println(77777);
        aux = this.sort(0, size - 1);
        aux = this.printAll();
        return 0;
    }

    public int sort(int lo, int hi) {
        int p;
        int aux;
        if (lo < hi) {
            p = this.partition(lo, hi);
            aux = this.sort(lo, p - 1);
            aux = this.sort(p + 1, hi);
        } else {
            aux = 0;
        }
        return 0;
    }

    public int partition(int lo, int hi) {
        int pivot;
        int i;
        int j;
        int t;
        pivot = numbers[hi];
        i = lo;
        j = lo;
        while (j < hi) {
            if (numbers[j] < pivot) {
                t = numbers[i];
                numbers[i] = numbers[j];
                numbers[j] = t;
                i = i + 1;
            } else {
                t = 0;
            }
            j = j + 1;
        }
        t = numbers[i];
        numbers[i] = numbers[hi];
        numbers[hi] = t;
        return i;
    }

    public int printAll() {
        int k;
        k = 0;
        while (k < size) {
            System.out.println(numbers[k]);
            k = k + 1;
        }
        return 0;
    }

    public int init(int sz) {
        size = sz;
        numbers = new int[sz];
        numbers[0] = 14;
        numbers[1] = 3;
        numbers[2] = 17;
        numbers[3] = 8;
        numbers[4] = 0;
        numbers[5] = 18;
        numbers[6] = 9;
        numbers[7] = 1;
        numbers[8] = 20;
        numbers[9] = 11;
        return 0;
    }
}
