class TreeVisitor {
    public static void main(String[] a) {
        System.out.println(new TV().start());
    }
}

class Item {
    int weight;
    boolean hasNextItem;
    Item nextItem;

    public int setWeight(int w) {
        weight = w;
        return 0;
    }

    public int getWeight() {
        return weight;
    }

    public int setNextItem(Item n) {
        nextItem = n;
        hasNextItem = true;
        return 0;
    }

    public Item getNextItem() {
        return nextItem;
    }

    public boolean getHasNextItem() {
        return hasNextItem;
    }

    public int accept(Visitor v) {
        return v.visit(this);
    }
}

class Visitor {
    public int visit(Item it) {
        return 0;
    }
}

class SumVisitor extends Visitor {
    public int visit(Item it) {
        int subtotal;
        if (it.getHasNextItem())
            subtotal = it.getNextItem().accept(this);
        else
            subtotal = 0;
        return it.getWeight() + subtotal;
    }
}

class CountVisitor extends Visitor {
    public int visit(Item it) {
        int rest;
        if (it.getHasNextItem())
            rest = it.getNextItem().accept(this);
        else
            rest = 0;
        return 1 + rest;
    }
}

class MaxVisitor extends SumVisitor {
    public int visit(Item it) {
        int best;
        if (it.getHasNextItem())
            best = it.getNextItem().accept(this);
        else
            best = 0;
        if (best < it.getWeight())
            best = it.getWeight();
        else
            best = best;
        return best;
    }
}

class TV {
    public int start() {
        Item first;
        Item second;
        Item third;
        Item fourth;
        Visitor v;
        int aux;
        first = new Item();
        second = new Item();
        third = new Item();
        fourth = new Item();
        aux = first.setWeight(30);
        aux = second.setWeight(42);
        aux = third.setWeight(25);
        aux = fourth.setWeight(15);
        aux = first.setNextItem(second);
        aux = second.setNextItem(third);
        aux = third.setNextItem(fourth);
        v = new SumVisitor();
        System.out.println(first.accept(v));
        v = new CountVisitor();
        System.out.println(first.accept(v));
        v = new MaxVisitor();
        System.out.println(first.accept(v));
        return 0;
    }
}
