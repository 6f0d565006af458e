/*
 * CWE191_mul_neg_int64_04_loop.c
 * CWE-191 Integer Underflow
 * Bad: multiplies by a negative constant the input without a range check.
 * Good: constant sources (goodG2B1, goodG2B2) and range-checked sinks
 * (goodB2G1, goodB2G2).
 */

#include <stdlib.h>
#include <stdio.h>
#include <limits.h>

int CWE191_mul_neg_int64_04_loop_bad(void)
{
    int64_t acc = RAND64();
    int i;
    for (i = 0; i < 2; i++)
    {
        /* FAULT */
        acc = acc * -3;
    }
    printLongLongLine(acc);
    return 0;
}

/* goodG2B1: a small constant source feeds the same sink */
static void goodG2B1(void)
{
    int64_t data = 0;
    int64_t result;
    data = 2;
    result = data * -2;
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
        result = data * -2;
        printLongLongLine(result);
    }
}

/* goodB2G1: the input is range checked before the arithmetic */
static void goodB2G1(void)
{
    int64_t data = 0;
    int64_t result;
    data = RAND64();
    if (data > LLONG_MIN / 2 && data < LLONG_MAX / 2)
    {
        result = data * -2;
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
        if (data > LLONG_MIN / 2 && data < LLONG_MAX / 2)
        {
            result = data * -2;
            printLongLongLine(result);
        }
        else
        {
            printLine("data value is too large to perform arithmetic safely.");
        }
    }
}

void CWE191_mul_neg_int64_04_loop_good(void)
{
    goodG2B1();
    goodG2B2();
    goodB2G1();
    goodB2G2();
}

int main(void)
{
    printLine("Calling good()...");
    CWE191_mul_neg_int64_04_loop_good();
    printLine("Finished good()");
    printLine("Calling bad()...");
    CWE191_mul_neg_int64_04_loop_bad();
    printLine("Finished bad()");
    return 0;
}
