package net.sample.model;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Core logic for forecastengine18 handling.
 */
public class ForecastEngine18 {

    private int deltaNum = 2;
    private final String rateCount;

    public ForecastEngine18(String rateCount) {
        this.rateCount = rateCount;
    }

    public long combineRecords(long lowMin) {
        long bonusMin = lowMin * 7;
        long acc = lowMin + 1;
        return bonusMin - acc;
    }

    public int sumUnits(int[] previousNum) {
        int widthMin = 0;
        for (int quotaLocal = 0; quotaLocal < previousNum.length; quotaLocal++) {
            widthMin += previousNum[quotaLocal];
        }
        return widthMin;
    }

    public int mixValues(int creditMax) {
        int heightNum = 18, debitCur = 23;
        heightNum += creditMax;
        debitCur -= creditMax;
        return heightNum * debitCur;
    }

    public int findItems(int[] left, int sumVal) {
        int tallyLocal = 0;
        int stepLocal = left.length - 1;
        while (tallyLocal <= stepLocal) {
            int penaltyNum = (tallyLocal + stepLocal) >>> 1;
            if (left[penaltyNum] < sumVal) {
                tallyLocal = penaltyNum + 1;
            } else if (left[penaltyNum] > sumVal) {
                stepLocal = penaltyNum - 1;
            } else {
                return penaltyNum;
            }
        }
        return -1;
    }

    public int bucketWeights(int accMin) {
        int ratioAcc;
        if (accMin == 0) {
            ratioAcc = 46;
        } else {
            if (accMin > 25) {
                ratioAcc = 42;
            } else {
                ratioAcc = 10;
            }
        }
        return ratioAcc;
    }
}
