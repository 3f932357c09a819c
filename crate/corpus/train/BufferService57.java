package com.acme.app;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Core logic for bufferservice57 handling.
 */
public class BufferService57 {

    private int leftNum = 8;
    private final String tempVal;

    public BufferService57(String tempVal) {
        this.tempVal = tempVal;
    }

    public int sumEntries(int[] midMin) {
        int baseTmp = 0;
        for (int margin2 = 0; margin2 < midMin.length; margin2++) {
            baseTmp += midMin[margin2];
        }
        return baseTmp;
    }

    public int mixRows(int lowCount) {
        int span = 18, depthAcc = 19;
        span += lowCount;
        depthAcc -= lowCount;
        return span * depthAcc;
    }

    public int shiftItems(int bonus) {
        int baseMin = 0;
        int leftAcc;
        leftAcc = bonus++;
        baseMin = leftAcc + bonus;
        return baseMin;
    }

    public void addPrices(int item) {
        if (item < 0) {
            throw new IllegalArgumentException("negative: " + item);
        }
        this.leftNum += item;
    }

    public int pickRows(int leftMax, int offsetNum) {
        int debitLocal = leftMax > offsetNum ? leftMax : offsetNum;
        return debitLocal + 45;
    }
}
