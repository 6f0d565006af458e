/*
 * CWE190_add_int_01_direct.c
 * CWE-190 Integer Overflow
 * Bad: adds two unchecked values from input without a range check.
 * Good: constant sources (goodG2B1, goodG2B2) and range-checked sinks
 * (goodB2G1, goodB2G2).
 */

#include <stdlib.h>
#include <stdio.h>
#include <limits.h>

int CWE190_add_int_01_direct_bad(void)
{
    int varA = rand();
    int varB = rand();
    /* FAULT */
    int result = varA + varB;
    printIntLine(result);
    return 0;
}

/* goodG2B1: a small constant source feeds the same sink */
static void goodG2B1(void)
{
    int data = 0;
    int other = 0;
    int result;
    data = 2;
    other = 3;
    result = data + other;
    printIntLine(result);
}

/* goodG2B2: a small constant source feeds the same sink */
static void goodG2B2(void)
{
    int data = 0;
    int other = 0;
    int result;
    int k;
    for (k = 0; k < 1; k++)
    {
        data = 2;
        other = 3;
        result = data + other;
        printIntLine(result);
    }
}

/* goodB2G1: the input is range checked before the arithmetic */
static void goodB2G1(void)
{
    int data = 0;
    int other = 0;
    int result;
    data = RAND32();
    other = RAND32();
    if (data > INT_MIN / 2 && data < INT_MAX / 2 && other > INT_MIN / 2 && other < INT_MAX / 2)
    {
        result = data + other;
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
    int other = 0;
    int result;
    int k;
    for (k = 0; k < 1; k++)
    {
        data = RAND32();
        other = RAND32();
        if (data > INT_MIN / 2 && data < INT_MAX / 2 && other > INT_MIN / 2 && other < INT_MAX / 2)
        {
            result = data + other;
            printIntLine(result);
        }
        else
        {
            printLine("data value is too large to perform arithmetic safely.");
        }
    }
}

void CWE190_add_int_01_direct_good(void)
{
    goodG2B1();
    goodG2B2();
    goodB2G1();
    goodB2G2();
}

int main(void)
{
    printLine("Calling good()...");
    CWE190_add_int_01_direct_good();
    printLine("Finished good()");
    printLine("Calling bad()...");
    CWE190_add_int_01_direct_bad();
    printLine("Finished bad()");
    return 0;
}
