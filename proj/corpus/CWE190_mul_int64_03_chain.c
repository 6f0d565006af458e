/*
 * CWE190_mul_int64_03_chain.c
 * CWE-190 Integer Overflow
 * Bad: multiplies two unchecked values from input without a range check.
 * Good: constant sources (goodG2B1, goodG2B2) and range-checked sinks
 * (goodB2G1, goodB2G2).
 */

#include <stdlib.h>
#include <stdio.h>
#include <limits.h>
#include <math.h>

int64_t times(int64_t m, int64_t n)
{
    int64_t r;
    /* FAULT */
    r = m * n;
    return r;
}

int64_t outer(int64_t m, int64_t n)
{
    return times(m, n);
}

int CWE190_mul_int64_03_chain_bad(void)
{
    int64_t m = RAND64();
    int64_t n = RAND64();
    printLongLongLine(outer(m, n));
    return 0;
}

/* goodG2B1: a small constant source feeds the same sink */
static void goodG2B1(void)
{
    int64_t data = 0;
    int64_t other = 0;
    int64_t result;
    data = 2;
    other = 3;
    result = data * other;
    printLongLongLine(result);
}

/* goodG2B2: a small constant source feeds the same sink */
static void goodG2B2(void)
{
    int64_t data = 0;
    int64_t other = 0;
    int64_t result;
    int k;
    for (k = 0; k < 1; k++)
    {
        data = 2;
        other = 3;
        result = data * other;
        printLongLongLine(result);
    }
}

/* goodB2G1: the input is range checked before the arithmetic */
static void goodB2G1(void)
{
    int64_t data = 0;
    int64_t other = 0;
    int64_t result;
    data = RAND64();
    other = RAND64();
    if (data > -sqrt(LLONG_MAX) && data < sqrt(LLONG_MAX) && other > -sqrt(LLONG_MAX) && other < sqrt(LLONG_MAX))
    {
        result = data * other;
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
    int64_t other = 0;
    int64_t result;
    int k;
    for (k = 0; k < 1; k++)
    {
        data = RAND64();
        other = RAND64();
        if (data > -sqrt(LLONG_MAX) && data < sqrt(LLONG_MAX) && other > -sqrt(LLONG_MAX) && other < sqrt(LLONG_MAX))
        {
            result = data * other;
            printLongLongLine(result);
        }
        else
        {
            printLine("data value is too large to perform arithmetic safely.");
        }
    }
}

void CWE190_mul_int64_03_chain_good(void)
{
    goodG2B1();
    goodG2B2();
    goodB2G1();
    goodB2G2();
}

int main(void)
{
    printLine("Calling good()...");
    CWE190_mul_int64_03_chain_good();
    printLine("Finished good()");
    printLine("Calling bad()...");
    CWE190_mul_int64_03_chain_bad();
    printLine("Finished bad()");
    return 0;
}
