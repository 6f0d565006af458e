/*
 * CWE190_square_char_06_direct.c
 * CWE-190 Integer Overflow
 * Bad: squares the input without a range check.
 * Good: constant sources (goodG2B1, goodG2B2) and range-checked sinks
 * (goodB2G1, goodB2G2).
 */

#include <stdio.h>
#include <stdlib.h>
#include <limits.h>
#include <math.h>

int CWE190_square_char_06_direct_bad(void)
{
    char c = 0;
    char sq;
    fscanf(stdin, "%c", &c);
    /* FAULT */
    sq = c * c;
    printHexCharLine(sq);
    return 0;
}

/* goodG2B1: a small constant source feeds the same sink */
static void goodG2B1(void)
{
    char data = 0;
    char result;
    data = 2;
    result = data * data;
    printHexCharLine(result);
}

/* goodG2B2: a small constant source feeds the same sink */
static void goodG2B2(void)
{
    char data = 0;
    char result;
    int k;
    for (k = 0; k < 1; k++)
    {
        data = 2;
        result = data * data;
        printHexCharLine(result);
    }
}

/* goodB2G1: the input is range checked before the arithmetic */
static void goodB2G1(void)
{
    char data = 0;
    char result;
    fscanf(stdin, "%c", &data);
    if (data > -sqrt(CHAR_MAX) && data < sqrt(CHAR_MAX))
    {
        result = data * data;
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
    char result;
    int k;
    for (k = 0; k < 1; k++)
    {
        fscanf(stdin, "%c", &data);
        if (data > -sqrt(CHAR_MAX) && data < sqrt(CHAR_MAX))
        {
            result = data * data;
            printHexCharLine(result);
        }
        else
        {
            printLine("data value is too large to perform arithmetic safely.");
        }
    }
}

void CWE190_square_char_06_direct_good(void)
{
    goodG2B1();
    goodG2B2();
    goodB2G1();
    goodB2G2();
}

int main(void)
{
    printLine("Calling good()...");
    CWE190_square_char_06_direct_good();
    printLine("Finished good()");
    printLine("Calling bad()...");
    CWE190_square_char_06_direct_bad();
    printLine("Finished bad()");
    return 0;
}
