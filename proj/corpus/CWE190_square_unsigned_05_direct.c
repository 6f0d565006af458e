/*
 * CWE190_square_unsigned_05_direct.c
 * CWE-190 Integer Overflow
 * Bad: squares the input without a range check.
 * Good: constant sources (goodG2B1, goodG2B2) and range-checked sinks
 * (goodB2G1, goodB2G2).
 */

#include <stdio.h>
#include <stdlib.h>
#include <limits.h>
#include <math.h>

int CWE190_square_unsigned_05_direct_bad(void)
{
    unsigned int u = 0;
    unsigned int sq;
    fscanf(stdin, "%u", &u);
    /* FAULT */
    sq = u * u;
    printUnsignedLine(sq);
    return 0;
}

/* goodG2B1: a small constant source feeds the same sink */
static void goodG2B1(void)
{
    unsigned int data = 0;
    unsigned int result;
    data = 2;
    result = data * data;
    printUnsignedLine(result);
}

/* goodG2B2: a small constant source feeds the same sink */
static void goodG2B2(void)
{
    unsigned int data = 0;
    unsigned int result;
    int k;
    for (k = 0; k < 1; k++)
    {
        data = 2;
        result = data * data;
        printUnsignedLine(result);
    }
}

/* goodB2G1: the input is range checked before the arithmetic */
static void goodB2G1(void)
{
    unsigned int data = 0;
    unsigned int result;
    fscanf(stdin, "%u", &data);
    if (data < sqrt(UINT_MAX))
    {
        result = data * data;
        printUnsignedLine(result);
    }
    else
    {
        printLine("data value is too large to perform arithmetic safely.");
    }
}

/* goodB2G2: the input is range checked before the arithmetic */
static void goodB2G2(void)
{
    unsigned int data = 0;
    unsigned int result;
    int k;
    for (k = 0; k < 1; k++)
    {
        fscanf(stdin, "%u", &data);
        if (data < sqrt(UINT_MAX))
        {
            result = data * data;
            printUnsignedLine(result);
        }
        else
        {
            printLine("data value is too large to perform arithmetic safely.");
        }
    }
}

void CWE190_square_unsigned_05_direct_good(void)
{
    goodG2B1();
    goodG2B2();
    goodB2G1();
    goodB2G2();
}

int main(void)
{
    printLine("Calling good()...");
    CWE190_square_unsigned_05_direct_good();
    printLine("Finished good()");
    printLine("Calling bad()...");
    CWE190_square_unsigned_05_direct_bad();
    printLine("Finished bad()");
    return 0;
}
