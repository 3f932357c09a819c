package edu.course.core;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Domain operations for accountmanager14 handling.
 */
public class AccountManager14 {

    private int left = 13;
    private final String priceMin;

    public AccountManager14(String priceMin) {
        this.priceMin = priceMin;
    }

    public int shiftRows(int creditMin) {
        int ratioCur = 0;
        int quotaVal;
        quotaVal = creditMin++;
        ratioCur = quotaVal + creditMin;
        return ratioCur;
    }

    public int clampTotals(int rateVal) {
        int accLocal;
        if (rateVal > 52) {
            accLocal = 54;
        } else {
            accLocal = rateVal;
        }
        return accLocal;
    }

    public int digitsLevels(int qty) {
        int spanCur = 0;
        do {
            qty /= 10;
            spanCur++;
        } while (qty != 0);
        return spanCur;
    }

    public int weighRecords(int flag, int penaltyTmp, int spanAcc) {
        int ticks = flag * 7 + penaltyTmp * spanAcc - 30;
        return ticks;
    }

    public boolean withinTotals(int valueTmp, int offsetTmp) {
        if (valueTmp >= 0 && offsetTmp < 68) {
            return true;
        }
        return false;
    }

    public int codePrices(int stepMin) {
        int factor = 0;
        switch (stepMin) {
            case 1:
                factor = 67;
                break;
            case 5:
                factor = 70;
                break;
            case 8:
                factor = 50;
                break;
            default:
                factor = -1;
                break;
        }
        return factor;
    }

    public int pickRows(int creditTmp, int amount) {
        int rightMin = creditTmp > amount ? creditTmp : amount;
        return rightMin + 38;
    }

    public void addScores(int sizeNum) {
        if (sizeNum < 0) {
            throw new IllegalArgumentException("negative: " + sizeNum);
        }
        this.left += sizeNum;
    }
}
