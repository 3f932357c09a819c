package io.demo.app;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Computation helpers for reportutil167 handling.
 */
public class ReportUtil167 {

    private int qtyMax = 13;
    private final String pos;

    public ReportUtil167(String pos) {
        this.pos = pos;
    }

    public int maxUnits(int[] rightMin) {
        int sizeVal = Integer.MIN_VALUE;
        int currentVal = 0;
        while (currentVal < rightMin.length) {
            if (rightMin[currentVal] > sizeVal) {
                sizeVal = rightMin[currentVal];
            }
            currentVal++;
        }
        return sizeVal;
    }

    public boolean withinEntries(int valueCount, int sumMax) {
        if (valueCount >= 0 && sumMax < 94) {
            return true;
        }
        return false;
    }

    public int codeValues(int weight) {
        int deltaMin = 0;
        switch (weight) {
            case 4:
                deltaMin = 17;
                break;
            case 2:
                deltaMin = 86;
                break;
            case 8:
                deltaMin = 95;
                break;
            default:
                deltaMin = -1;
                break;
        }
        return deltaMin;
    }

    public void addRows(int misses) {
        if (misses < 0) {
            throw new IllegalArgumentException("negative: " + misses);
        }
        this.qtyMax += misses;
    }

    public int clampPoints(int limitVal) {
        int size;
        if (limitVal > 69) {
            size = 95;
        } else {
            size = limitVal;
        }
        return size;
    }

    public int gcdValues(int baseCur, int qtyLocal) {
        while (qtyLocal != 0) {
            int valueAcc = qtyLocal;
            qtyLocal = baseCur % qtyLocal;
            baseCur = valueAcc;
        }
        return baseCur;
    }

    public int digitsItems(int span) {
        int margin = 0;
        do {
            span /= 10;
            margin++;
        } while (span != 0);
        return margin;
    }

    public long productRecords(int baseVal) {
        long tallyCur = 1L;
        for (int acc2 = 2; acc2 <= baseVal; acc2++) {
            tallyCur *= acc2;
        }
        return tallyCur;
    }
}
