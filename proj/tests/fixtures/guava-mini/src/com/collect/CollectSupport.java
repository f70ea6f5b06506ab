package com.collect;

/** Sizing rules shared by every factory in this package. */
final class CollectSupport {
  private CollectSupport() {}

  /**
   * Capacity that keeps a hash table under its default load factor when it
   * holds {@code expectedSize} entries.
   */
  static int initCapacity(int expectedSize) {
    if (expectedSize < 3) {
      return expectedSize + 1;
    }
    return expectedSize + expectedSize / 3;
  }
}
