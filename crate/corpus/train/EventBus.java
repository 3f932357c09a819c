package org.example.events;

import java.util.ArrayList;
import java.util.Collections;
import java.util.List;
import java.util.Map;
import java.util.concurrent.ConcurrentHashMap;
import java.util.function.Consumer;
import java.util.function.Function;

/**
 * A tiny synchronous event bus with typed listeners.
 *
 * @param <E> base event type
 */
public final class EventBus<E extends Comparable<? super E>> {

    private final Map<Class<? extends E>, List<Consumer<? super E>>> listeners =
            new ConcurrentHashMap<>();
    private static final int MAX_LISTENERS = 1 << 10;

    @SuppressWarnings({"unchecked", "rawtypes"})
    public <T extends E> void subscribe(Class<T> type, Consumer<? super T> listener) {
        List<Consumer<? super E>> list = listeners.computeIfAbsent(type, k -> new ArrayList<>());
        if (list.size() >= MAX_LISTENERS) {
            throw new IllegalStateException("too many listeners for " + type.getName());
        }
        list.add((Consumer) listener);
    }

    public int publish(E event) {
        int delivered = 0;
        for (Map.Entry<Class<? extends E>, List<Consumer<? super E>>> entry : listeners.entrySet()) {
            if (!entry.getKey().isInstance(event)) {
                continue;
            }
            for (Consumer<? super E> c : entry.getValue()) {
                c.accept(event);
                delivered++;
            }
        }
        return delivered;
    }

    public <R> List<R> mapAll(List<? extends E> events, Function<? super E, ? extends R> fn) {
        List<R> out = new ArrayList<>(events.size());
        events.forEach(e -> out.add(fn.apply(e)));
        Collections.sort(out, (a, b) -> String.valueOf(a).compareTo(String.valueOf(b)));
        return out;
    }

    public static <T> T firstOrDefault(List<T> items, T fallback) {
        return items == null || items.isEmpty() ? fallback : items.get(0);
    }

    public long countMatching(List<E> events, E pivot) {
        return events.stream()
                .filter(e -> e.compareTo(pivot) >= 0)
                .map(Object::toString)
                .distinct()
                .count();
    }
}
