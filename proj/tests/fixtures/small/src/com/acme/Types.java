package com.acme;

class Types {
  private final Sizer sizer = new Sizer();

  Sizer sharedSizer() {
    return sizer;
  }
}
