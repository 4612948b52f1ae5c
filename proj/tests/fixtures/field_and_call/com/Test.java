package com;

import dom.ASTParser;
public class Test {
  ASTParser p;
}
