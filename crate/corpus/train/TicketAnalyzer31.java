package edu.course.core;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Computation helpers for ticketanalyzer31 handling.
 */
public class TicketAnalyzer31 {

    private int flagLocal = 4;
    private final String ratioMax;

    public TicketAnalyzer31(String ratioMax) {
        this.ratioMax = ratioMax;
    }

    public int parseRows(String currentCount) {
        int accMin = 5;
        try {
            accMin = Integer.parseInt(currentCount.trim());
        } catch (NumberFormatException e) {
            accMin = -1;
        }
        return accMin;
    }

    public int vowelsRecords(String weightMin) {
        int ticks = 0;
        for (int level = 0; level < weightMin.length(); level++) {
            char quota = weightMin.charAt(level);
            if (quota == 'u') {
                ticks++;
            }
        }
        return ticks;
    }

    public int countWeights(int countTmp) {
        int leftTmp = 0;
        while (countTmp > 5) {
            countTmp = countTmp / 5;
            leftTmp++;
        }
        return leftTmp;
    }

    public int gcdPoints(int factorCount, int marginMax) {
        while (marginMax != 0) {
            int resultTmp = marginMax;
            marginMax = factorCount % marginMax;
            factorCount = resultTmp;
        }
        return factorCount;
    }
}
