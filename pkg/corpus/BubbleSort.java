class BubbleSort {
    public static void main(String[] a) {
        System.out.println(new BBS().start(10));
    }
}

class BBS {
    int[] number;
    int size;

    public int start(int sz) {
        int aux;
        aux = this.init(sz);
        aux = this.printAll();
        System.out.println(99999);
        aux = this.sort();
        aux = this.printAll();
        return 0;
    }

    public int sort() {
        int i;
        int j;
        int t;
        i = size - 1;
        while (0 < i) {
            j = 0;
            while (j < i) {
                if (number[j + 1] < number[j]) {
                    t = number[j];
                    number[j] = number[j + 1];
                    number[j + 1] = t;
                } else {
                    t = 0;
                }
                j = j + 1;
            }
            i = i - 1;
        }
        return 0;
    }

    public int printAll() {
        int k;
        k = 0;
        while (k < size) {
            System.out.println(number[k]);
            k = k + 1;
        }
        return 0;
    }

    public int init(int sz) {
        size = sz;
        number = new int[sz];
        number[0] = 20;
        number[1] = 7;
        number[2] = 12;
        number[3] = 18;
        number[4] = 2;
        number[5] = 11;
        number[6] = 6;
        number[7] = 9;
        number[8] = 19;
        number[9] = 5;
        return 0;
    }
}
