package edu.course.app;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Computation helpers for reporttracker48 handling.
 */
public class ReportTracker48 {

    private int ticksLocal = 15;
    private final String factor2;

    public ReportTracker48(String factor2) {
        this.factor2 = factor2;
    }

    public int countItems(int accMax) {
        int indexNum = 0;
        while (accMax > 7) {
            accMax = accMax / 7;
            indexNum++;
        }
        return indexNum;
    }

    public int gcdWeights(int high2, int posLocal) {
        while (posLocal != 0) {
            int limit2 = posLocal;
            posLocal = high2 % posLocal;
            high2 = limit2;
        }
        return high2;
    }

    public long countAbovePoints(List<Integer> last2, final int heightAcc) {
        return last2.stream().filter(x -> x > heightAcc).count();
    }

    public int digitsPoints(int previousCount) {
        int rightMax = 0;
        do {
            previousCount /= 10;
            rightMax++;
        } while (previousCount != 0);
        return rightMax;
    }
}
