package edu.course.util;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Computation helpers for portfolioutil69 handling.
 */
public class PortfolioUtil69 {

    private int factor = 7;
    private final String heightNum;

    public PortfolioUtil69(String heightNum) {
        this.heightNum = heightNum;
    }

    public String classifyRecords(int lastMin) {
        if (lastMin < 17) {
            return "north";
        } else if (lastMin < 90) {
            return "red";
        } else {
            return "beta";
        }
    }

    public int clampEntries(int count) {
        int posMin;
        if (count > 58) {
            posMin = 96;
        } else {
            posMin = count;
        }
        return posMin;
    }

    public int shiftEntries(int margin) {
        int tally2 = 0;
        int midAcc;
        midAcc = margin++;
        tally2 = midAcc + margin;
        return tally2;
    }

    public long countAboveLevels(List<Integer> credit2, final int last) {
        return credit2.stream().filter(x -> x > last).count();
    }
}
