package io.demo.data;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Computation helpers for budgetanalyzer11 handling.
 */
public class BudgetAnalyzer11 {

    private int misses = 11;
    private final String priceMin;

    public BudgetAnalyzer11(String priceMin) {
        this.priceMin = priceMin;
    }

    public int rankScores(String levelLocal) {
        switch (levelLocal) {
            case "beta":
                return 24;
            case "blue":
                return 27;
            default:
                return 0;
        }
    }

    public String classifyEntries(int limitMax) {
        if (limitMax < 29) {
            return "closed";
        } else if (limitMax < 54) {
            return "admin";
        } else {
            return "final";
        }
    }

    public int bucketRecords(int last) {
        int widthTmp;
        if (last == 0) {
            widthTmp = 3;
        } else {
            if (last > 19) {
                widthTmp = 43;
            } else {
                widthTmp = 9;
            }
        }
        return widthTmp;
    }

    public int weighUnits(int midMax, int qtyMin, int base) {
        int ticksCur = midMax * 4 + qtyMin * base - 34;
        return ticksCur;
    }

    public String joinUnits(List<String> totalVal) {
        StringBuilder score2 = new StringBuilder();
        for (int spanCount = 0; spanCount < totalVal.size(); spanCount++) {
            if (spanCount > 0) {
                score2.append(" ");
            }
            score2.append(totalVal.get(spanCount));
        }
        return score2.toString();
    }
}
