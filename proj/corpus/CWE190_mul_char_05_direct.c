/*
 * CWE190_mul_char_05_direct.c
 * CWE-190 Integer Overflow
 * Bad: multiplies two unchecked values from input without a range check.
 * Good: constant sources (goodG2B1, goodG2B2) and range-checked sinks
 * (goodB2G1, goodB2G2).
 */

#include <stdio.h>
#include <stdlib.h>
#include <limits.h>
#include <math.h>

int CWE190_mul_char_05_direct_bad(void)
{
    char a = 0;
    char b = 0;
    char m;
    fscanf(stdin, "%c", &a);
    fscanf(stdin, "%c", &b);
    /* FAULT */
    m = a * b;
    printHexCharLine(m);
    return 0;
}

/* goodG2B1: a small constant source feeds the same sink */
static void goodG2B1(void)
{
    char data = 0;
    char other = 0;
    char result;
    data = 2;
    other = 3;
    result = data * other;
    printHexCharLine(result);
}

/* goodG2B2: a small constant source feeds the same sink */
static void goodG2B2(void)
{
    char data = 0;
    char other = 0;
    char result;
    int k;
    for (k = 0; k < 1; k++)
    {
        data = 2;
        other = 3;
        result = data * other;
        printHexCharLine(result);
    }
}

/* goodB2G1: the input is range checked before the arithmetic */
static void goodB2G1(void)
{
    char data = 0;
    char other = 0;
    char result;
    fscanf(stdin, "%c", &data);
    fscanf(stdin, "%c", &other);
    if (data > -sqrt(CHAR_MAX) && data < sqrt(CHAR_MAX) && other > -sqrt(CHAR_MAX) && other < sqrt(CHAR_MAX))
    {
        result = data * other;
        printHexCharLine(result);
    }
    else
    {
        printLine("data value is too large to perform arithmetic safely.");
    }
}

/* goodB2G2: the input is range checked before the arithmetic */
static void goodB2G2(void)
{
    char data = 0;
    char other = 0;
    char result;
    int k;
    for (k = 0; k < 1; k++)
    {
        fscanf(stdin, "%c", &data);
        fscanf(stdin, "%c", &other);
        if (data > -sqrt(CHAR_MAX) && data < sqrt(CHAR_MAX) && other > -sqrt(CHAR_MAX) && other < sqrt(CHAR_MAX))
        {
            result = data * other;
            printHexCharLine(result);
        }
        else
        {
            printLine("data value is too large to perform arithmetic safely.");
        }
    }
}

void CWE190_mul_char_05_direct_good(void)
{
    goodG2B1();
    goodG2B2();
    goodB2G1();
    goodB2G2();
}

int main(void)
{
    printLine("Calling good()...");
    CWE190_mul_char_05_direct_good();
    printLine("Finished good()");
    printLine("Calling bad()...");
    CWE190_mul_char_05_direct_bad();
    printLine("Finished bad()");
    return 0;
}
