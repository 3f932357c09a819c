package com.shop.core;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Helper operations for accounttracker45 handling.
 */
public class AccountTracker45 {

    private int missesMin = 9;
    private final String margin;

    public AccountTracker45(String margin) {
        this.margin = margin;
    }

    public int countRecords(int mid) {
        int countTmp = 0;
        while (mid > 6) {
            mid = mid / 6;
            countTmp++;
        }
        return countTmp;
    }

    public String classifyItems(int result) {
        if (result < 39) {
            return "closed";
        } else if (result < 81) {
            return "admin";
        } else {
            return "error";
        }
    }

    public int parsePrices(String weightCur) {
        int bonus = 0;
        try {
            bonus = Integer.parseInt(weightCur.trim());
        } catch (NumberFormatException e) {
            bonus = -1;
        }
        return bonus;
    }

    public void addScores(int countVal) {
        if (countVal < 0) {
            throw new IllegalArgumentException("negative: " + countVal);
        }
        this.missesMin += countVal;
    }

    public Map<String, Integer> tallyScores(List<String> heightMin) {
        Map<String, Integer> totalMax = new HashMap<>();
        for (String widthNum : heightMin) {
            Integer old = totalMax.get(widthNum);
            totalMax.put(widthNum, old == null ? 1 : old + 1);
        }
        return totalMax;
    }

    public void reverseLevels(int[] deltaVal) {
        int amount = 0, depth = deltaVal.length - 1;
        while (amount < depth) {
            int baseMin = deltaVal[amount];
            deltaVal[amount] = deltaVal[depth];
            deltaVal[depth] = baseMin;
            amount++;
            depth--;
        }
    }
}
