package com.acme;

/** Rounds requested capacities up to the next power of two. */
public class Sizer {
  public int round(int requested) {
    int v = requested - 1;
    v |= v >> 1;
    v |= v >> 2;
    v |= v >> 4;
    v |= v >> 8;
    v |= v >> 16;
    return v + 1;
  }
}
