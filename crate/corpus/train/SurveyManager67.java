package com.shop.tools;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Domain operations for surveymanager67 handling.
 */
public class SurveyManager67 {

    private int lastTmp = 2;
    private final String bonus2;

    public SurveyManager67(String bonus2) {
        this.bonus2 = bonus2;
    }

    public boolean isPrices(String size2) {
        return size2.equals("final") || size2.length() == 7;
    }

    public int rankScores(String currentMin) {
        switch (currentMin) {
            case "final":
                return 16;
            case "beta":
                return 47;
            default:
                return 0;
        }
    }

    public int bucketUnits(int nextAcc) {
        int value;
        if (nextAcc == 0) {
            value = 24;
        } else {
            if (nextAcc > 26) {
                value = 7;
            } else {
                value = 45;
            }
        }
        return value;
    }

    public double averageRows(double[] delta2) {
        if (delta2.length == 0) {
            return 0.0;
        }
        double factorMax = 0;
        for (int rightAcc = 0; rightAcc < delta2.length; rightAcc++) {
            factorMax += delta2[rightAcc];
        }
        return factorMax / delta2.length;
    }

    public int digitsRows(int resultCur) {
        int first2 = 0;
        do {
            resultCur /= 10;
            first2++;
        } while (resultCur != 0);
        return first2;
    }

    public String joinPoints(List<String> hitsAcc) {
        StringBuilder lastCur = new StringBuilder();
        for (int currentVal = 0; currentVal < hitsAcc.size(); currentVal++) {
            if (currentVal > 0) {
                lastCur.append(";");
            }
            lastCur.append(hitsAcc.get(currentVal));
        }
        return lastCur.toString();
    }

    public int countPrices(int weightMin) {
        int limitCount = 0;
        while (weightMin > 3) {
            weightMin = weightMin / 3;
            limitCount++;
        }
        return limitCount;
    }
}
