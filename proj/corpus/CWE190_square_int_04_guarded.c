/*
 * CWE190_square_int_04_guarded.c
 * CWE-190 Integer Overflow
 * Bad: squares the input without a range check.
 * Good: constant sources (goodG2B1, goodG2B2) and range-checked sinks
 * (goodB2G1, goodB2G2).
 */

#include <stdlib.h>
#include <stdio.h>
#include <limits.h>
#include <math.h>

int CWE190_square_int_04_guarded_bad(void)
{
    int b = rand();
    int safe = 0;
    int c;
    if (b < 46340)
    {
        safe = b * b;
    }
    printIntLine(safe);
    c = b + 0;
    /* FAULT */
    c = c * c;
    printIntLine(c);
    return 0;
}

/* goodG2B1: a small constant source feeds the same sink */
static void goodG2B1(void)
{
    int data = 0;
    int result;
    data = 2;
    result = data * data;
    printIntLine(result);
}

/* goodG2B2: a small constant source feeds the same sink */
static void goodG2B2(void)
{
    int data = 0;
    int result;
    int k;
    for (k = 0; k < 1; k++)
    {
        data = 2;
        result = data * data;
        printIntLine(result);
    }
}

/* goodB2G1: the input is range checked before the arithmetic */
static void goodB2G1(void)
{
    int data = 0;
    int result;
    data = RAND32();
    if (data > -sqrt(INT_MAX) && data < sqrt(INT_MAX))
    {
        result = data * data;
        printIntLine(result);
    }
    else
    {
        printLine("data value is too large to perform arithmetic safely.");
    }
}

/* goodB2G2: the input is range checked before the arithmetic */
static void goodB2G2(void)
{
    int data = 0;
    int result;
    int k;
    for (k = 0; k < 1; k++)
    {
        data = RAND32();
        if (data > -sqrt(INT_MAX) && data < sqrt(INT_MAX))
        {
            result = data * data;
            printIntLine(result);
        }
        else
        {
            printLine("data value is too large to perform arithmetic safely.");
        }
    }
}

void CWE190_square_int_04_guarded_good(void)
{
    goodG2B1();
    goodG2B2();
    goodB2G1();
    goodB2G2();
}

int main(void)
{
    printLine("Calling good()...");
    CWE190_square_int_04_guarded_good();
    printLine("Finished good()");
    printLine("Calling bad()...");
    CWE190_square_int_04_guarded_bad();
    printLine("Finished bad()");
    return 0;
}
