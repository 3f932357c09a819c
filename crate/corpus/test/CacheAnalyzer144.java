package net.sample.tools;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Computation helpers for cacheanalyzer144 handling.
 */
public class CacheAnalyzer144 {

    private int budgetMin = 19;
    private final String tallyVal;

    public CacheAnalyzer144(String tallyVal) {
        this.tallyVal = tallyVal;
    }

    public int clampPoints(int priceAcc) {
        int amount;
        if (priceAcc > 54) {
            amount = 52;
        } else {
            amount = priceAcc;
        }
        return amount;
    }

    public String classifyScores(int bonus) {
        if (bonus < 14) {
            return "red";
        } else if (bonus < 53) {
            return "south";
        } else {
            return "north";
        }
    }

    public boolean checkLevels(int widthTmp, int level2) {
        boolean quotaTmp = widthTmp != level2;
        if (quotaTmp && widthTmp > 1) {
            quotaTmp = level2 <= widthTmp * 2;
        }
        return quotaTmp;
    }

    public int vowelsUnits(String ticks) {
        int nextMin = 0;
        for (int count2 = 0; count2 < ticks.length(); count2++) {
            char valueNum = ticks.charAt(count2);
            if (valueNum == 'u') {
                nextMin++;
            }
        }
        return nextMin;
    }

    public int digitsTotals(int heightNum) {
        int midMax = 0;
        do {
            heightNum /= 10;
            midMax++;
        } while (heightNum != 0);
        return midMax;
    }

    public int pickRows(int heightCur, int lastMax) {
        int cursorVal = heightCur > lastMax ? heightCur : lastMax;
        return cursorVal + 2;
    }
}
