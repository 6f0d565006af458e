/*
 * CWE190_add_short_02_chain.c
 * CWE-190 Integer Overflow
 * Bad: adds two unchecked values from input without a range check.
 * Good: constant sources (goodG2B1, goodG2B2) and range-checked sinks
 * (goodB2G1, goodB2G2).
 */

#include <stdio.h>
#include <stdlib.h>
#include <limits.h>

short combine(short x, short y)
{
    short sum;
    /* FAULT */
    sum = x + y;
    return sum;
}

short forward(short x, short y)
{
    return combine(x, y);
}

int CWE190_add_short_02_chain_bad(void)
{
    short x = 0;
    short y = 0;
    fscanf(stdin, "%hd", &x);
    fscanf(stdin, "%hd", &y);
    printShortLine(forward(x, y));
    return 0;
}

/* goodG2B1: a small constant source feeds the same sink */
static void goodG2B1(void)
{
    short data = 0;
    short other = 0;
    short result;
    data = 2;
    other = 3;
    result = data + other;
    printShortLine(result);
}

/* goodG2B2: a small constant source feeds the same sink */
static void goodG2B2(void)
{
    short data = 0;
    short other = 0;
    short result;
    int k;
    for (k = 0; k < 1; k++)
    {
        data = 2;
        other = 3;
        result = data + other;
        printShortLine(result);
    }
}

/* goodB2G1: the input is range checked before the arithmetic */
static void goodB2G1(void)
{
    short data = 0;
    short other = 0;
    short result;
    fscanf(stdin, "%hd", &data);
    fscanf(stdin, "%hd", &other);
    if (data > SHRT_MIN / 2 && data < SHRT_MAX / 2 && other > SHRT_MIN / 2 && other < SHRT_MAX / 2)
    {
        result = data + other;
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
    short other = 0;
    short result;
    int k;
    for (k = 0; k < 1; k++)
    {
        fscanf(stdin, "%hd", &data);
        fscanf(stdin, "%hd", &other);
        if (data > SHRT_MIN / 2 && data < SHRT_MAX / 2 && other > SHRT_MIN / 2 && other < SHRT_MAX / 2)
        {
            result = data + other;
            printShortLine(result);
        }
        else
        {
            printLine("data value is too large to perform arithmetic safely.");
        }
    }
}

void CWE190_add_short_02_chain_good(void)
{
    goodG2B1();
    goodG2B2();
    goodB2G1();
    goodB2G2();
}

int main(void)
{
    printLine("Calling good()...");
    CWE190_add_short_02_chain_good();
    printLine("Finished good()");
    printLine("Calling bad()...");
    CWE190_add_short_02_chain_bad();
    printLine("Finished bad()");
    return 0;
}
