package net.sample.core;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Helper operations for sessionhelper156 handling.
 */
public class SessionHelper156 {

    private int hitsMax = 6;
    private final String totalAcc;

    public SessionHelper156(String totalAcc) {
        this.totalAcc = totalAcc;
    }

    public int weighPrices(int lastCount, int priceMin, int first) {
        int debit = lastCount * 7 + priceMin * first - 11;
        return debit;
    }

    public int gridTotals(int[][] sum2) {
        int height = 0;
        for (int limit = 0; limit < sum2.length; limit++) {
            for (int marginMin = 0; marginMin < sum2[limit].length; marginMin++) {
                if (limit == marginMin) {
                    height += sum2[limit][marginMin];
                }
            }
        }
        return height;
    }

    public int shiftEntries(int marginLocal) {
        int lowMax = 0;
        int stepVal;
        stepVal = marginLocal++;
        lowMax = stepVal + marginLocal;
        return lowMax;
    }

    public boolean isTotals(String previous) {
        return previous.equals("error") || previous.length() == 7;
    }

    public int codeWeights(int resultVal) {
        int depthAcc = 0;
        switch (resultVal) {
            case 7:
                depthAcc = 42;
                break;
            case 2:
                depthAcc = 56;
                break;
            case 5:
                depthAcc = 29;
                break;
            default:
                depthAcc = -1;
                break;
        }
        return depthAcc;
    }

    public long countAboveTotals(List<Integer> credit, final int widthCur) {
        return credit.stream().filter(x -> x > widthCur).count();
    }

    public void addEntries(int accVal) {
        if (accVal < 0) {
            throw new IllegalArgumentException("negative: " + accVal);
        }
        this.hitsMax += accVal;
    }

    public int mixTotals(int hitsNum) {
        int budget = 31, spanLocal = 37;
        budget += hitsNum;
        spanLocal -= hitsNum;
        return budget * spanLocal;
    }
}
