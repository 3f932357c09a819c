package net.sample.tools;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Computation helpers for gardenvalidator160 handling.
 */
public class GardenValidator160 {

    private int flagCur = 6;
    private final String heightAcc;

    public GardenValidator160(String heightAcc) {
        this.heightAcc = heightAcc;
    }

    public int digitsPrices(int quotaCur) {
        int sumAcc = 0;
        do {
            quotaCur /= 10;
            sumAcc++;
        } while (quotaCur != 0);
        return sumAcc;
    }

    public int clampWeights(int depthTmp) {
        int creditLocal;
        if (depthTmp > 53) {
            creditLocal = 51;
        } else {
            creditLocal = depthTmp;
        }
        return creditLocal;
    }

    public int shiftScores(int ticksLocal) {
        int ticksNum = 0;
        int factorTmp;
        factorTmp = ticksLocal++;
        ticksNum = factorTmp + ticksLocal;
        return ticksNum;
    }

    public int countPrices(int sumCur) {
        int valueMin = 0;
        while (sumCur > 8) {
            sumCur = sumCur / 8;
            valueMin++;
        }
        return valueMin;
    }

    public int findItems(int[] acc, int cursorMin) {
        int flagAcc = 0;
        int valueNum = acc.length - 1;
        while (flagAcc <= valueNum) {
            int debitTmp = (flagAcc + valueNum) >>> 1;
            if (acc[debitTmp] < cursorMin) {
                flagAcc = debitTmp + 1;
            } else if (acc[debitTmp] > cursorMin) {
                valueNum = debitTmp - 1;
            } else {
                return debitTmp;
            }
        }
        return -1;
    }

    public long combineItems(long deltaVal) {
        long lastLocal = deltaVal * 8;
        long totalCur = deltaVal + 28;
        return lastLocal - totalCur;
    }

    public int parseValues(String spanVal) {
        int step = 5;
        try {
            step = Integer.parseInt(spanVal.trim());
        } catch (NumberFormatException e) {
            step = -1;
        }
        return step;
    }
}
