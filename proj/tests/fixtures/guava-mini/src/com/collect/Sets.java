package com.collect;

import java.util.HashSet;

/** Pre-sized set factories, one per row kind the importer emits. */
public final class Sets {
  private Sets() {}

  /** Set sized for account rows; grows past the expected count without rehashing. */
  public static <E> HashSet<E> newAccountSet(int expectedSize) {
    return new HashSet<E>(CollectSupport.initCapacity(expectedSize));
  }

  /** Set sized for badge rows; grows past the expected count without rehashing. */
  public static <E> HashSet<E> newBadgeSet(int expectedSize) {
    return new HashSet<E>(CollectSupport.initCapacity(expectedSize));
  }

  /** Set sized for cart rows; grows past the expected count without rehashing. */
  public static <E> HashSet<E> newCartSet(int expectedSize) {
    return new HashSet<E>(CollectSupport.initCapacity(expectedSize));
  }

  /** Set sized for device rows; grows past the expected count without rehashing. */
  public static <E> HashSet<E> newDeviceSet(int expectedSize) {
    return new HashSet<E>(CollectSupport.initCapacity(expectedSize));
  }

  /** Set sized for event rows; grows past the expected count without rehashing. */
  public static <E> HashSet<E> newEventSet(int expectedSize) {
    return new HashSet<E>(CollectSupport.initCapacity(expectedSize));
  }

  /** Set sized for flag rows; grows past the expected count without rehashing. */
  public static <E> HashSet<E> newFlagSet(int expectedSize) {
    return new HashSet<E>(CollectSupport.initCapacity(expectedSize));
  }

  /** Set sized for group rows; grows past the expected count without rehashing. */
  public static <E> HashSet<E> newGroupSet(int expectedSize) {
    return new HashSet<E>(CollectSupport.initCapacity(expectedSize));
  }

  /** Set sized for host rows; grows past the expected count without rehashing. */
  public static <E> HashSet<E> newHostSet(int expectedSize) {
    return new HashSet<E>(CollectSupport.initCapacity(expectedSize));
  }

  /** Set sized for invite rows; grows past the expected count without rehashing. */
  public static <E> HashSet<E> newInviteSet(int expectedSize) {
    return new HashSet<E>(CollectSupport.initCapacity(expectedSize));
  }

  /** Set sized for job rows; grows past the expected count without rehashing. */
  public static <E> HashSet<E> newJobSet(int expectedSize) {
    return new HashSet<E>(CollectSupport.initCapacity(expectedSize));
  }

  /** Set sized for key rows; grows past the expected count without rehashing. */
  public static <E> HashSet<E> newKeySet(int expectedSize) {
    return new HashSet<E>(CollectSupport.initCapacity(expectedSize));
  }

  /** Set sized for label rows; grows past the expected count without rehashing. */
  public static <E> HashSet<E> newLabelSet(int expectedSize) {
    return new HashSet<E>(CollectSupport.initCapacity(expectedSize));
  }

  /** Set sized for member rows; grows past the expected count without rehashing. */
  public static <E> HashSet<E> newMemberSet(int expectedSize) {
    return new HashSet<E>(CollectSupport.initCapacity(expectedSize));
  }
}
