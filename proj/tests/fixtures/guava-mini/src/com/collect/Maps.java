package com.collect;

import java.util.HashMap;

/** Pre-sized map factories matching the set factories in {@link Sets}. */
public final class Maps {
  private static final float DEFAULT_LOAD = 0.75f;

  private Maps() {}

  /** Map keyed by account id, sized so the expected count fits under the load factor. */
  public static <K, V> HashMap<K, V> newAccountMap(int expectedSize) {
    int capacity = CollectSupport.initCapacity(expectedSize);
    return new HashMap<K, V>(capacity, DEFAULT_LOAD);
  }

  /** Map keyed by badge id, sized so the expected count fits under the load factor. */
  public static <K, V> HashMap<K, V> newBadgeMap(int expectedSize) {
    int capacity = CollectSupport.initCapacity(expectedSize);
    return new HashMap<K, V>(capacity, DEFAULT_LOAD);
  }

  /** Map keyed by cart id, sized so the expected count fits under the load factor. */
  public static <K, V> HashMap<K, V> newCartMap(int expectedSize) {
    int capacity = CollectSupport.initCapacity(expectedSize);
    return new HashMap<K, V>(capacity, DEFAULT_LOAD);
  }

  /** Map keyed by device id, sized so the expected count fits under the load factor. */
  public static <K, V> HashMap<K, V> newDeviceMap(int expectedSize) {
    int capacity = CollectSupport.initCapacity(expectedSize);
    return new HashMap<K, V>(capacity, DEFAULT_LOAD);
  }

  /** Map keyed by event id, sized so the expected count fits under the load factor. */
  public static <K, V> HashMap<K, V> newEventMap(int expectedSize) {
    int capacity = CollectSupport.initCapacity(expectedSize);
    return new HashMap<K, V>(capacity, DEFAULT_LOAD);
  }

  /** Map keyed by flag id, sized so the expected count fits under the load factor. */
  public static <K, V> HashMap<K, V> newFlagMap(int expectedSize) {
    int capacity = CollectSupport.initCapacity(expectedSize);
    return new HashMap<K, V>(capacity, DEFAULT_LOAD);
  }

  /** Map keyed by group id, sized so the expected count fits under the load factor. */
  public static <K, V> HashMap<K, V> newGroupMap(int expectedSize) {
    int capacity = CollectSupport.initCapacity(expectedSize);
    return new HashMap<K, V>(capacity, DEFAULT_LOAD);
  }

  /** Map keyed by host id, sized so the expected count fits under the load factor. */
  public static <K, V> HashMap<K, V> newHostMap(int expectedSize) {
    int capacity = CollectSupport.initCapacity(expectedSize);
    return new HashMap<K, V>(capacity, DEFAULT_LOAD);
  }

  /** Map keyed by invite id, sized so the expected count fits under the load factor. */
  public static <K, V> HashMap<K, V> newInviteMap(int expectedSize) {
    int capacity = CollectSupport.initCapacity(expectedSize);
    return new HashMap<K, V>(capacity, DEFAULT_LOAD);
  }

  /** Map keyed by job id, sized so the expected count fits under the load factor. */
  public static <K, V> HashMap<K, V> newJobMap(int expectedSize) {
    int capacity = CollectSupport.initCapacity(expectedSize);
    return new HashMap<K, V>(capacity, DEFAULT_LOAD);
  }
}
