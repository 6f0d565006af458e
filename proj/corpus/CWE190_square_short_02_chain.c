/*
 * CWE190_square_short_02_chain.c
 * CWE-190 Integer Overflow
 * Bad: squares the input without a range check.
 * Good: constant sources (goodG2B1, goodG2B2) and range-checked sinks
 * (goodB2G1, goodB2G2).
 */

#include <stdio.h>
#include <stdlib.h>
#include <limits.h>
#include <math.h>

void square_sink(short s)
{
    short r;
    /* FAULT */
    r = s * s;
    printShortLine(r);
}

void square_mid(short s)
{
    square_sink(s);
}

void square_top(short s)
{
    square_mid(s);
}

int CWE190_square_short_02_chain_bad(void)
{
    short s = 0;
    fscanf(stdin, "%hd", &s);
    square_top(s);
    return 0;
}

/* goodG2B1: a small constant source feeds the same sink */
static void goodG2B1(void)
{
    short data = 0;
    short result;
    data = 2;
    result = data * data;
    printShortLine(result);
}

/* goodG2B2: a small constant source feeds the same sink */
static void goodG2B2(void)
{
    short data = 0;
    short result;
    int k;
    for (k = 0; k < 1; k++)
    {
        data = 2;
        result = data * data;
        printShortLine(result);
    }
}

/* goodB2G1: the input is range checked before the arithmetic */
static void goodB2G1(void)
{
    short data = 0;
    short result;
    fscanf(stdin, "%hd", &data);
    if (data > -sqrt(SHRT_MAX) && data < sqrt(SHRT_MAX))
    {
        result = data * data;
        printShortLine(result);
    }
    else
    {
        printLine("data value is too large to perform arithmetic safely.");
    }
}

/* goodB2G2: the input is range checked before the arithmetic */
static void goodB2G2(void)
{
    short data = 0;
    short result;
    int k;
    for (k = 0; k < 1; k++)
    {
        fscanf(stdin, "%hd", &data);
        if (data > -sqrt(SHRT_MAX) && data < sqrt(SHRT_MAX))
        {
            result = data * data;
            printShortLine(result);
        }
        else
        {
            printLine("data value is too large to perform arithmetic safely.");
        }
    }
}

void CWE190_square_short_02_chain_good(void)
{
    goodG2B1();
    goodG2B2();
    goodB2G1();
    goodB2G2();
}

int main(void)
{
    printLine("Calling good()...");
    CWE190_square_short_02_chain_good();
    printLine("Finished good()");
    printLine("Calling bad()...");
    CWE190_square_short_02_chain_bad();
    printLine("Finished bad()");
    return 0;
}
