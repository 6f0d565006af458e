/*
 * CWE190_add_unsigned_04_loop.c
 * CWE-190 Integer Overflow
 * Bad: adds two unchecked values from input without a range check.
 * Good: constant sources (goodG2B1, goodG2B2) and range-checked sinks
 * (goodB2G1, goodB2G2).
 */

#include <stdio.h>
#include <stdlib.h>
#include <limits.h>

int CWE190_add_unsigned_04_loop_bad(void)
{
    unsigned int total = 0;
    unsigned int step = 0;
    int i;
    fscanf(stdin, "%u", &step);
    for (i = 0; i < 2; i++)
    {
        /* FAULT */
        total += step;
    }
    printUnsignedLine(total);
    return 0;
}

/* goodG2B1: a small constant source feeds the same sink */
static void goodG2B1(void)
{
    unsigned int data = 0;
    unsigned int other = 0;
    unsigned int result;
    data = 2;
    other = 3;
    result = data + other;
    printUnsignedLine(result);
}

/* goodG2B2: a small constant source feeds the same sink */
static void goodG2B2(void)
{
    unsigned int data = 0;
    unsigned int other = 0;
    unsigned int result;
    int k;
    for (k = 0; k < 1; k++)
    {
        data = 2;
        other = 3;
        result = data + other;
        printUnsignedLine(result);
    }
}

/* goodB2G1: the input is range checked before the arithmetic */
static void goodB2G1(void)
{
    unsigned int data = 0;
    unsigned int other = 0;
    unsigned int result;
    fscanf(stdin, "%u", &data);
    fscanf(stdin, "%u", &other);
    if (data < UINT_MAX / 2 && other < UINT_MAX / 2)
    {
        result = data + other;
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
    unsigned int other = 0;
    unsigned int result;
    int k;
    for (k = 0; k < 1; k++)
    {
        fscanf(stdin, "%u", &data);
        fscanf(stdin, "%u", &other);
        if (data < UINT_MAX / 2 && other < UINT_MAX / 2)
        {
            result = data + other;
            printUnsignedLine(result);
        }
        else
        {
            printLine("data value is too large to perform arithmetic safely.");
        }
    }
}

void CWE190_add_unsigned_04_loop_good(void)
{
    goodG2B1();
    goodG2B2();
    goodB2G1();
    goodB2G2();
}

int main(void)
{
    printLine("Calling good()...");
    CWE190_add_unsigned_04_loop_good();
    printLine("Finished good()");
    printLine("Calling bad()...");
    CWE190_add_unsigned_04_loop_bad();
    printLine("Finished bad()");
    return 0;
}
