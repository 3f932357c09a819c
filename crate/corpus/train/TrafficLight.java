package com.acme.signals;

/** Traffic light state machine with per-state behaviour. */
public enum TrafficLight {
    RED(30) {
        @Override
        TrafficLight next() {
            return GREEN;
        }
    },
    GREEN(25) {
        @Override
        TrafficLight next() {
            return YELLOW;
        }
    },
    YELLOW(5) {
        @Override
        TrafficLight next() {
            return RED;
        }
    };

    private final int seconds;

    TrafficLight(int seconds) {
        this.seconds = seconds;
    }

    abstract TrafficLight next();

    public int seconds() {
        return seconds;
    }

    public static int cycleLength() {
        int total = 0;
        for (TrafficLight t : values()) {
            total += t.seconds;
        }
        return total;
    }

    public static String describe(TrafficLight light) {
        String text;
        switch (light) {
            case RED:
                text = "stop";
                break;
            case GREEN:
                text = "go";
                break;
            default:
                text = "slow down";
        }
        return text + " for " + light.seconds() + "s";
    }

    public static TrafficLight after(TrafficLight start, int steps) {
        TrafficLight cur = start;
        int remaining = steps;
        while (remaining-- > 0) {
            cur = cur.next();
        }
        return cur;
    }
}
