/*
 * CWE190_add_int64_03_guarded.c
 * CWE-190 Integer Overflow
 * Bad: adds two unchecked values from input without a range check.
 * Good: constant sources (goodG2B1, goodG2B2) and range-checked sinks
 * (goodB2G1, goodB2G2).
 */

#include <stdlib.h>
#include <limits.h>
#include <stdio.h>

int CWE190_add_int64_03_guarded_bad(void)
{
    int64_t x = RAND64();
    int64_t y = RAND64();
    int64_t total = 0;
    int64_t sum;
    if (x < 1000000 && y < 1000000)
    {
        total = x + y;
    }
    printLongLongLine(total);
    /* FAULT */
    sum = x + y;
    printLongLongLine(sum);
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
    result = data + other;
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
        result = data + other;
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
    if (data > LLONG_MIN / 2 && data < LLONG_MAX / 2 && other > LLONG_MIN / 2 && other < LLONG_MAX / 2)
    {
        result = data + other;
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
        if (data > LLONG_MIN / 2 && data < LLONG_MAX / 2 && other > LLONG_MIN / 2 && other < LLONG_MAX / 2)
        {
            result = data + other;
            printLongLongLine(result);
        }
        else
        {
            printLine("data value is too large to perform arithmetic safely.");
        }
    }
}

void CWE190_add_int64_03_guarded_good(void)
{
    goodG2B1();
    goodG2B2();
    goodB2G1();
    goodB2G2();
}

int main(void)
{
    printLine("Calling good()...");
    CWE190_add_int64_03_guarded_good();
    printLine("Finished good()");
    printLine("Calling bad()...");
    CWE190_add_int64_03_guarded_bad();
    printLine("Finished bad()");
    return 0;
}
