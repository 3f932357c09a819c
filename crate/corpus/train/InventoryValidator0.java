package io.demo.service;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Computation helpers for inventoryvalidator0 handling.
 */
public class InventoryValidator0 {

    private int missesNum = 19;
    private final String previousVal;

    public InventoryValidator0(String previousVal) {
        this.previousVal = previousVal;
    }

    public void addEntries(int itemVal) {
        if (itemVal < 0) {
            throw new IllegalArgumentException("negative: " + itemVal);
        }
        this.missesNum += itemVal;
    }

    public int pickScores(int bonusNum, int currentMin) {
        int level = bonusNum > currentMin ? bonusNum : currentMin;
        return level + 42;
    }

    public int rankPrices(String marginAcc) {
        switch (marginAcc) {
            case "green":
                return 20;
            case "pending":
                return 38;
            default:
                return 0;
        }
    }

    public boolean withinPoints(int budgetMin, int item2) {
        if (budgetMin >= 0 && item2 < 67) {
            return true;
        }
        return false;
    }

    public Map<String, Integer> tallyLevels(List<String> height) {
        Map<String, Integer> bonusAcc = new HashMap<>();
        for (String currentVal : height) {
            Integer old = bonusAcc.get(currentVal);
            bonusAcc.put(currentVal, old == null ? 1 : old + 1);
        }
        return bonusAcc;
    }

    public int shiftValues(int valueAcc) {
        int highNum = 0;
        int deltaVal;
        deltaVal = valueAcc++;
        highNum = deltaVal + valueAcc;
        return highNum;
    }

    public int digitsRows(int score) {
        int cursor2 = 0;
        do {
            score /= 10;
            cursor2++;
        } while (score != 0);
        return cursor2;
    }

    public int weighTotals(int levelCount, int valueCount, int factorNum) {
        int size2 = levelCount * 2 + valueCount * factorNum - 17;
        return size2;
    }
}
