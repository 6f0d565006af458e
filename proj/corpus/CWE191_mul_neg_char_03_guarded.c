/*
 * CWE191_mul_neg_char_03_guarded.c
 * CWE-191 Integer Underflow
 * Bad: multiplies by a negative constant the input without a range check.
 * Good: constant sources (goodG2B1, goodG2B2) and range-checked sinks
 * (goodB2G1, goodB2G2).
 */

#include <stdio.h>
#include <stdlib.h>
#include <limits.h>

int CWE191_mul_neg_char_03_guarded_bad(void)
{
    char data = 0;
    char small = 0;
    char big;
    fscanf(stdin, "%c", &data);
    if (data > -20 && data < 20)
    {
        small = data * -5;
    }
    printHexCharLine(small);
    /* FAULT */
    big = data * -6;
    printHexCharLine(big);
    return 0;
}

/* goodG2B1: a small constant source feeds the same sink */
static void goodG2B1(void)
{
    char data = 0;
    char result;
    data = 2;
    result = data * -2;
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
        result = data * -2;
        printHexCharLine(result);
    }
}

/* goodB2G1: the input is range checked before the arithmetic */
static void goodB2G1(void)
{
    char data = 0;
    char result;
    fscanf(stdin, "%c", &data);
    if (data > CHAR_MIN / 2 && data < CHAR_MAX / 2)
    {
        result = data * -2;
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
        if (data > CHAR_MIN / 2 && data < CHAR_MAX / 2)
        {
            result = data * -2;
            printHexCharLine(result);
        }
        else
        {
            printLine("data value is too large to perform arithmetic safely.");
        }
    }
}

void CWE191_mul_neg_char_03_guarded_good(void)
{
    goodG2B1();
    goodG2B2();
    goodB2G1();
    goodB2G2();
}

int main(void)
{
    printLine("Calling good()...");
    CWE191_mul_neg_char_03_guarded_good();
    printLine("Finished good()");
    printLine("Calling bad()...");
    CWE191_mul_neg_char_03_guarded_bad();
    printLine("Finished bad()");
    return 0;
}
