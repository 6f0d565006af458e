/*
 * CWE190_add_const_char_03_loop.c
 * CWE-190 Integer Overflow
 * Bad: adds one to the input without a range check.
 * Good: constant sources (goodG2B1, goodG2B2) and range-checked sinks
 * (goodB2G1, goodB2G2).
 */

#include <stdio.h>
#include <stdlib.h>
#include <limits.h>

int CWE190_add_const_char_03_loop_bad(void)
{
    char data = 0;
    char total = 0;
    int i;
    fscanf(stdin, "%c", &data);
    for (i = 0; i < 3; i++)
    {
        /* FAULT */
        total = data + 2;
        printHexCharLine(total);
    }
    return 0;
}

/* goodG2B1: a small constant source feeds the same sink */
static void goodG2B1(void)
{
    char data = 0;
    char result;
    data = 2;
    result = data + 1;
    printHexCharLine(result);
}

/* goodG2B2: a small constant source feeds the same sink */
static void goodG2B2(void)
{
    char data = 0;
    char result;
    int k;
    for (k = 0; k < 1; k++)
    {
        data = 2;
        result = data + 1;
        printHexCharLine(result);
    }
}

/* goodB2G1: the input is range checked before the arithmetic */
static void goodB2G1(void)
{
    char data = 0;
    char result;
    fscanf(stdin, "%c", &data);
    if (data < CHAR_MAX)
    {
        result = data + 1;
        printHexCharLine(result);
    }
    else
    {
        printLine("data value is too large to perform arithmetic safely.");
    }
}

/* goodB2G2: the input is range checked before the arithmetic */
static void goodB2G2(void)
{
    char data = 0;
    char result;
    int k;
    for (k = 0; k < 1; k++)
    {
        fscanf(stdin, "%c", &data);
        if (data < CHAR_MAX)
        {
            result = data + 1;
            printHexCharLine(result);
        }
        else
        {
            printLine("data value is too large to perform arithmetic safely.");
        }
    }
}

void CWE190_add_const_char_03_loop_good(void)
{
    goodG2B1();
    goodG2B2();
    goodB2G1();
    goodB2G2();
}

int main(void)
{
    printLine("Calling good()...");
    CWE190_add_const_char_03_loop_good();
    printLine("Finished good()");
    printLine("Calling bad()...");
    CWE190_add_const_char_03_loop_bad();
    printLine("Finished bad()");
    return 0;
}
