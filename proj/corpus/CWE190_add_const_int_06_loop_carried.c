/*
 * CWE190_add_const_int_06_loop_carried.c
 * CWE-190 Integer Overflow
 * Bad: adds one to the input without a range check.
 * Good: constant sources (goodG2B1, goodG2B2) and range-checked sinks
 * (goodB2G1, goodB2G2).
 */

#include <stdlib.h>
#include <stdio.h>
#include <limits.h>

int CWE190_add_const_int_06_loop_carried_bad(void)
{
    int count = rand();
    int i;
    for (i = 0; i < 4; i++)
    {
        /* FAULT */
        count++;
    }
    printIntLine(count);
    return 0;
}

/* goodG2B1: a small constant source feeds the same sink */
static void goodG2B1(void)
{
    int data = 0;
    int result;
    data = 2;
    result = data + 1;
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
        result = data + 1;
        printIntLine(result);
    }
}

/* goodB2G1: the input is range checked before the arithmetic */
static void goodB2G1(void)
{
    int data = 0;
    int result;
    data = RAND32();
    if (data < INT_MAX)
    {
        result = data + 1;
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
        if (data < INT_MAX)
        {
            result = data + 1;
            printIntLine(result);
        }
        else
        {
            printLine("data value is too large to perform arithmetic safely.");
        }
    }
}

void CWE190_add_const_int_06_loop_carried_good(void)
{
    goodG2B1();
    goodG2B2();
    goodB2G1();
    goodB2G2();
}

int main(void)
{
    printLine("Calling good()...");
    CWE190_add_const_int_06_loop_carried_good();
    printLine("Finished good()");
    printLine("Calling bad()...");
    CWE190_add_const_int_06_loop_carried_bad();
    printLine("Finished bad()");
    return 0;
}
