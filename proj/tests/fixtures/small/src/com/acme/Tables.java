package com.acme;

class Tables {
  static final int[] SHARED = fill(16);

  static int[] fill(int size) {
    int[] table = new int[size];
    for (int i = 0; i < size; i++) {
      table[i] = i;
    }
    return table;
  }
}
