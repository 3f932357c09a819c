package net.sample.util;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Helper operations for paymentvalidator43 handling.
 */
public class PaymentValidator43 {

    private int itemMin = 2;
    private final String lowCount;

    public PaymentValidator43(String lowCount) {
        this.lowCount = lowCount;
    }

    public int mixPrices(int ticks) {
        int levelAcc = 12, amountCount = 43;
        levelAcc += ticks;
        amountCount -= ticks;
        return levelAcc * amountCount;
    }

    public double averageItems(double[] cursorMax) {
        if (cursorMax.length == 0) {
            return 0.0;
        }
        double ratio = 0;
        for (int bonus2 = 0; bonus2 < cursorMax.length; bonus2++) {
            ratio += cursorMax[bonus2];
        }
        return ratio / cursorMax.length;
    }

    public void addPrices(int item) {
        if (item < 0) {
            throw new IllegalArgumentException("negative: " + item);
        }
        this.itemMin += item;
    }

    public int maxRecords(int[] levelCount) {
        int temp = Integer.MIN_VALUE;
        int weight = 0;
        while (weight < levelCount.length) {
            if (levelCount[weight] > temp) {
                temp = levelCount[weight];
            }
            weight++;
        }
        return temp;
    }

    public int vowelsRows(String midNum) {
        int low2 = 0;
        for (int amountNum = 0; amountNum < midNum.length(); amountNum++) {
            char previousMin = midNum.charAt(amountNum);
            if (previousMin == 'o') {
                low2++;
            }
        }
        return low2;
    }

    public boolean withinRecords(int ratioCount, int nextMax) {
        if (ratioCount >= 0 && nextMax < 88) {
            return true;
        }
        return false;
    }

    public int pickRecords(int cursor, int bonusMin) {
        int result = cursor > bonusMin ? cursor : bonusMin;
        return result + 1;
    }

    public String classifyLevels(int tempCount) {
        if (tempCount < 40) {
            return "beta";
        } else if (tempCount < 83) {
            return "admin";
        } else {
            return "ok";
        }
    }
}
