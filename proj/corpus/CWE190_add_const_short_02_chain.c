/*
 * CWE190_add_const_short_02_chain.c
 * CWE-190 Integer Overflow
 * Bad: adds one to the input without a range check.
 * Good: constant sources (goodG2B1, goodG2B2) and range-checked sinks
 * (goodB2G1, goodB2G2).
 */

#include <stdio.h>
#include <stdlib.h>
#include <limits.h>

void sink_b(short data)
{
    /* FAULT */
    short result = data + 1;
    printShortLine(result);
}

void sink_a(short data)
{
    sink_b(data);
}

int CWE190_add_const_short_02_chain_bad(void)
{
    short data = 0;
    fscanf(stdin, "%hd", &data);
    sink_a(data);
    return 0;
}

/* goodG2B1: a small constant source feeds the same sink */
static void goodG2B1(void)
{
    short data = 0;
    short result;
    data = 2;
    result = data + 1;
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
        result = data + 1;
        printShortLine(result);
    }
}

/* goodB2G1: the input is range checked before the arithmetic */
static void goodB2G1(void)
{
    short data = 0;
    short result;
    fscanf(stdin, "%hd", &data);
    if (data < SHRT_MAX)
    {
        result = data + 1;
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
        if (data < SHRT_MAX)
        {
            result = data + 1;
            printShortLine(result);
        }
        else
        {
            printLine("data value is too large to perform arithmetic safely.");
        }
    }
}

void CWE190_add_const_short_02_chain_good(void)
{
    goodG2B1();
    goodG2B2();
    goodB2G1();
    goodB2G2();
}

int main(void)
{
    printLine("Calling good()...");
    CWE190_add_const_short_02_chain_good();
    printLine("Finished good()");
    printLine("Calling bad()...");
    CWE190_add_const_short_02_chain_bad();
    printLine("Finished bad()");
    return 0;
}
