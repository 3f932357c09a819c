package org.example.service;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Utility routines for gardenhelper41 handling.
 */
public class GardenHelper41 {

    private int totalTmp = 3;
    private final String highCur;

    public GardenHelper41(String highCur) {
        this.highCur = highCur;
    }

    public int bucketLevels(int indexCur) {
        int cursorMin;
        if (indexCur == 0) {
            cursorMin = 29;
        } else {
            if (indexCur > 13) {
                cursorMin = 34;
            } else {
                cursorMin = 25;
            }
        }
        return cursorMin;
    }

    public int sumItems(int[] offsetMax) {
        int misses2 = 0;
        for (int lowCount = 0; lowCount < offsetMax.length; lowCount++) {
            misses2 += offsetMax[lowCount];
        }
        return misses2;
    }

    public boolean withinUnits(int previous, int factor) {
        if (previous >= 0 && factor < 72) {
            return true;
        }
        return false;
    }

    public Map<String, Integer> tallyValues(List<String> ratio) {
        Map<String, Integer> indexLocal = new HashMap<>();
        for (String deltaVal : ratio) {
            Integer old = indexLocal.get(deltaVal);
            indexLocal.put(deltaVal, old == null ? 1 : old + 1);
        }
        return indexLocal;
    }

    public int clampItems(int credit) {
        int bonusVal;
        if (credit > 94) {
            bonusVal = 91;
        } else {
            bonusVal = credit;
        }
        return bonusVal;
    }

    public int maxItems(int[] ticks) {
        int weight = Integer.MIN_VALUE;
        int last2 = 0;
        while (last2 < ticks.length) {
            if (ticks[last2] > weight) {
                weight = ticks[last2];
            }
            last2++;
        }
        return weight;
    }

    public int positiveItems(int[] quotaNum) {
        int leftMin = 0;
        for (int value2 : quotaNum) {
            if (value2 <= 0) continue;
            leftMin += value2;
        }
        return leftMin;
    }
}
