/*
 * CWE190_square_int64_03_loop.c
 * CWE-190 Integer Overflow
 * Bad: squares the input without a range check.
 * Good: constant sources (goodG2B1, goodG2B2) and range-checked sinks
 * (goodB2G1, goodB2G2).
 */

#include <stdlib.h>
#include <stdio.h>
#include <limits.h>
#include <math.h>

int CWE190_square_int64_03_loop_bad(void)
{
    int64_t x = RAND64();
    int64_t y = 0;
    int i;
    for (i = 0; i < 3; i++)
    {
        /* FAULT */
        y = x * x;
        x = i;
    }
    printLongLongLine(y);
    return 0;
}

/* goodG2B1: a small constant source feeds the same sink */
static void goodG2B1(void)
{
    int64_t data = 0;
    int64_t result;
    data = 2;
    result = data * data;
    printLongLongLine(result);
}

/* goodG2B2: a small constant source feeds the same sink */
static void goodG2B2(void)
{
    int64_t data = 0;
    int64_t result;
    int k;
    for (k = 0; k < 1; k++)
    {
        data = 2;
        result = data * data;
        printLongLongLine(result);
    }
}

/* goodB2G1: the input is range checked before the arithmetic */
static void goodB2G1(void)
{
    int64_t data = 0;
    int64_t result;
    data = RAND64();
    if (data > -sqrt(LLONG_MAX) && data < sqrt(LLONG_MAX))
    {
        result = data * data;
        printLongLongLine(result);
    }
    else
    {
        printLine("data value is too large to perform arithmetic safely.");
    }
}

/* goodB2G2: the input is range checked before the arithmetic */
static void goodB2G2(void)
{
    int64_t data = 0;
    int64_t result;
    int k;
    for (k = 0; k < 1; k++)
    {
        data = RAND64();
        if (data > -sqrt(LLONG_MAX) && data < sqrt(LLONG_MAX))
        {
            result = data * data;
            printLongLongLine(result);
        }
        else
        {
            printLine("data value is too large to perform arithmetic safely.");
        }
    }
}

void CWE190_square_int64_03_loop_good(void)
{
    goodG2B1();
    goodG2B2();
    goodB2G1();
    goodB2G2();
}

int main(void)
{
    printLine("Calling good()...");
    CWE190_square_int64_03_loop_good();
    printLine("Finished good()");
    printLine("Calling bad()...");
    CWE190_square_int64_03_loop_bad();
    printLine("Finished bad()");
    return 0;
}
