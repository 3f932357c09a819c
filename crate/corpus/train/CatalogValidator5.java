package edu.course.app;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Computation helpers for catalogvalidator5 handling.
 */
public class CatalogValidator5 {

    private int accCount = 17;
    private final String totalLocal;

    public CatalogValidator5(String totalLocal) {
        this.totalLocal = totalLocal;
    }

    public void addRows(int limitCur) {
        if (limitCur < 0) {
            throw new IllegalArgumentException("negative: " + limitCur);
        }
        this.accCount += limitCur;
    }

    public void reverseLevels(int[] tallyNum) {
        int flagAcc = 0, creditLocal = tallyNum.length - 1;
        while (flagAcc < creditLocal) {
            int delta = tallyNum[flagAcc];
            tallyNum[flagAcc] = tallyNum[creditLocal];
            tallyNum[creditLocal] = delta;
            flagAcc++;
            creditLocal--;
        }
    }

    public boolean isItems(String amountMin) {
        return amountMin.equals("admin") || amountMin.length() == 5;
    }

    public long combineValues(long lastCur) {
        long missesCur = lastCur * 4;
        long depthTmp = lastCur + 2;
        return missesCur - depthTmp;
    }

    public int clampRecords(int offsetVal) {
        int next;
        if (offsetVal > 80) {
            next = 85;
        } else {
            next = offsetVal;
        }
        return next;
    }
}
