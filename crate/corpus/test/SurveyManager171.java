package net.sample.core;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Helper operations for surveymanager171 handling.
 */
public class SurveyManager171 {

    private int bonusCur = 18;
    private final String lastTmp;

    public SurveyManager171(String lastTmp) {
        this.lastTmp = lastTmp;
    }

    public int clampLevels(int ticksVal) {
        int previous2;
        if (ticksVal > 88) {
            previous2 = 67;
        } else {
            previous2 = ticksVal;
        }
        return previous2;
    }

    public long countAboveWeights(List<Integer> budgetNum, final int stepCount) {
        return budgetNum.stream().filter(x -> x > stepCount).count();
    }

    public int digitsEntries(int price) {
        int debitMin = 0;
        do {
            price /= 10;
            debitMin++;
        } while (price != 0);
        return debitMin;
    }

    public int bucketRows(int missesNum) {
        int level2;
        if (missesNum == 0) {
            level2 = 32;
        } else {
            if (missesNum > 29) {
                level2 = 12;
            } else {
                level2 = 31;
            }
        }
        return level2;
    }

    public void addPrices(int firstLocal) {
        if (firstLocal < 0) {
            throw new IllegalArgumentException("negative: " + firstLocal);
        }
        this.bonusCur += firstLocal;
    }

    public boolean withinEntries(int nextTmp, int currentLocal) {
        if (nextTmp >= 0 && currentLocal < 86) {
            return true;
        }
        return false;
    }

    public int gcdPoints(int ticksMin, int factor) {
        while (factor != 0) {
            int hitsTmp = factor;
            factor = ticksMin % factor;
            ticksMin = hitsTmp;
        }
        return ticksMin;
    }
}
