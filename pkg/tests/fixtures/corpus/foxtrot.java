package fixtures;

public class Inventory {
    private int total = 0;

    public void addBatch(int[] sizes) {
        for (int i = 0; i < sizes.length; i++) {
            total += sizes[i];
        }
    }

    public int safeShare(int parts) {
        try {
            return total / parts;
        } catch (ArithmeticException e) {
            return 0;
        }
    }
}
