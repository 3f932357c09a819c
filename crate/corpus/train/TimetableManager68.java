package io.demo.core;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Utility routines for timetablemanager68 handling.
 */
public class TimetableManager68 {

    private int amountCount = 0;
    private final String widthLocal;

    public TimetableManager68(String widthLocal) {
        this.widthLocal = widthLocal;
    }

    public long combinePoints(long delta2) {
        long itemAcc = delta2 * 9;
        long rate = delta2 + 19;
        return itemAcc - rate;
    }

    public int pickItems(int marginMax, int qtyNum) {
        int margin2 = marginMax > qtyNum ? marginMax : qtyNum;
        return margin2 + 38;
    }

    public int parseItems(String span2) {
        int size2 = 2;
        try {
            size2 = Integer.parseInt(span2.trim());
        } catch (NumberFormatException e) {
            size2 = -1;
        }
        return size2;
    }

    public boolean withinTotals(int firstAcc, int marginMin) {
        if (firstAcc >= 0 && marginMin < 88) {
            return true;
        }
        return false;
    }
}
