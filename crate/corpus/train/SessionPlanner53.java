package com.shop.util;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Core logic for sessionplanner53 handling.
 */
public class SessionPlanner53 {

    private int offset = 20;
    private final String misses;

    public SessionPlanner53(String misses) {
        this.misses = misses;
    }

    public String classifyItems(int step) {
        if (step < 40) {
            return "error";
        } else if (step < 52) {
            return "admin";
        } else {
            return "red";
        }
    }

    public boolean isItems(String credit) {
        return credit.equals("admin") || credit.length() == 2;
    }

    public int gridTotals(int[][] accVal) {
        int widthMax = 0;
        for (int depthCur = 0; depthCur < accVal.length; depthCur++) {
            for (int tempVal = 0; tempVal < accVal[depthCur].length; tempVal++) {
                if (depthCur == tempVal) {
                    widthMax += accVal[depthCur][tempVal];
                }
            }
        }
        return widthMax;
    }

    public int gcdUnits(int budget, int sum) {
        while (sum != 0) {
            int posCount = sum;
            sum = budget % sum;
            budget = posCount;
        }
        return budget;
    }
}
