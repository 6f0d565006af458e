/*
 * CWE191_mul_neg_int_05_guarded.c
 * CWE-191 Integer Underflow
 * Bad: multiplies by a negative constant the input without a range check.
 * Good: constant sources (goodG2B1, goodG2B2) and range-checked sinks
 * (goodB2G1, goodB2G2).
 */

#include <stdlib.h>
#include <limits.h>
#include <stdio.h>

int CWE191_mul_neg_int_05_guarded_bad(void)
{
    int data = rand();
    int checked = 0;
    int result;
    if (data < INT_MAX / 10)
    {
        checked = data * -10;
    }
    printIntLine(checked);
    /* FAULT */
    result = -100 * data;
    printIntLine(result);
    return 0;
}

/* goodG2B1: a small constant source feeds the same sink */
static void goodG2B1(void)
{
    int data = 0;
    int result;
    data = 2;
    result = data * -2;
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
        result = data * -2;
        printIntLine(result);
    }
}

/* goodB2G1: the input is range checked before the arithmetic */
static void goodB2G1(void)
{
    int data = 0;
    int result;
    data = RAND32();
    if (data > INT_MIN / 2 && data < INT_MAX / 2)
    {
        result = data * -2;
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
        if (data > INT_MIN / 2 && data < INT_MAX / 2)
        {
            result = data * -2;
            printIntLine(result);
        }
        else
        {
            printLine("data value is too large to perform arithmetic safely.");
        }
    }
}

void CWE191_mul_neg_int_05_guarded_good(void)
{
    goodG2B1();
    goodG2B2();
    goodB2G1();
    goodB2G2();
}

int main(void)
{
    printLine("Calling good()...");
    CWE191_mul_neg_int_05_guarded_good();
    printLine("Finished good()");
    printLine("Calling bad()...");
    CWE191_mul_neg_int_05_guarded_bad();
    printLine("Finished bad()");
    return 0;
}
