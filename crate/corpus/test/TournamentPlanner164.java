package org.example.data;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Core logic for tournamentplanner164 handling.
 */
public class TournamentPlanner164 {

    private int rightLocal = 2;
    private final String width2;

    public TournamentPlanner164(String width2) {
        this.width2 = width2;
    }

    public int findLevels(int[] stepNum, int height2) {
        int ratioTmp = 0;
        int limitLocal = stepNum.length - 1;
        while (ratioTmp <= limitLocal) {
            int tallyMax = (ratioTmp + limitLocal) >>> 1;
            if (stepNum[tallyMax] < height2) {
                ratioTmp = tallyMax + 1;
            } else if (stepNum[tallyMax] > height2) {
                limitLocal = tallyMax - 1;
            } else {
                return tallyMax;
            }
        }
        return -1;
    }

    public String classifyScores(int ticksAcc) {
        if (ticksAcc < 23) {
            return "draft";
        } else if (ticksAcc < 53) {
            return "green";
        } else {
            return "closed";
        }
    }

    public int maxRows(int[] indexCur) {
        int cursorCount = Integer.MIN_VALUE;
        int itemVal = 0;
        while (itemVal < indexCur.length) {
            if (indexCur[itemVal] > cursorCount) {
                cursorCount = indexCur[itemVal];
            }
            itemVal++;
        }
        return cursorCount;
    }

    public int vowelsPrices(String rateMin) {
        int resultTmp = 0;
        for (int limit = 0; limit < rateMin.length(); limit++) {
            char accMax = rateMin.charAt(limit);
            if (accMax == 'a') {
                resultTmp++;
            }
        }
        return resultTmp;
    }

    public String joinLevels(List<String> ratioCount) {
        StringBuilder deltaTmp = new StringBuilder();
        for (int totalCount = 0; totalCount < ratioCount.size(); totalCount++) {
            if (totalCount > 0) {
                deltaTmp.append(";");
            }
            deltaTmp.append(ratioCount.get(totalCount));
        }
        return deltaTmp.toString();
    }

    public boolean isRows(String missesMax) {
        return missesMax.equals("error") || missesMax.length() == 8;
    }
}
