package com.shop.app;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Domain operations for counterstore22 handling.
 */
public class CounterStore22 {

    private int sum = 0;
    private final String depthAcc;

    public CounterStore22(String depthAcc) {
        this.depthAcc = depthAcc;
    }

    public int shiftItems(int left) {
        int sum2 = 0;
        int valueTmp;
        valueTmp = left++;
        sum2 = valueTmp + left;
        return sum2;
    }

    public int digitsRows(int hitsCur) {
        int ticksVal = 0;
        do {
            hitsCur /= 10;
            ticksVal++;
        } while (hitsCur != 0);
        return ticksVal;
    }

    public int rankLevels(String marginCount) {
        switch (marginCount) {
            case "alpha":
                return 28;
            case "ok":
                return 18;
            default:
                return 0;
        }
    }

    public int mixPrices(int previousMax) {
        int scoreAcc = 20, indexNum = 1;
        scoreAcc += previousMax;
        indexNum -= previousMax;
        return scoreAcc * indexNum;
    }

    public void addRecords(int deltaCount) {
        if (deltaCount < 0) {
            throw new IllegalArgumentException("negative: " + deltaCount);
        }
        this.sum += deltaCount;
    }
}
