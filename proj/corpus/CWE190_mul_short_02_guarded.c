/*
 * CWE190_mul_short_02_guarded.c
 * CWE-190 Integer Overflow
 * Bad: multiplies two unchecked values from input without a range check.
 * Good: constant sources (goodG2B1, goodG2B2) and range-checked sinks
 * (goodB2G1, goodB2G2).
 */

#include <stdio.h>
#include <stdlib.h>
#include <limits.h>
#include <math.h>

int CWE190_mul_short_02_guarded_bad(void)
{
    short w = 0;
    short h = 0;
    short area = 0;
    short scaled;
    fscanf(stdin, "%hd", &w);
    fscanf(stdin, "%hd", &h);
    if (w > 0 && w < 100 && h > 0 && h < 100)
    {
        area = w * h;
    }
    printShortLine(area);
    /* FAULT */
    scaled = w * h;
    printShortLine(scaled);
    return 0;
}

/* goodG2B1: a small constant source feeds the same sink */
static void goodG2B1(void)
{
    short data = 0;
    short other = 0;
    short result;
    data = 2;
    other = 3;
    result = data * other;
    printShortLine(result);
}

/* goodG2B2: a small constant source feeds the same sink */
static void goodG2B2(void)
{
    short data = 0;
    short other = 0;
    short result;
    int k;
    for (k = 0; k < 1; k++)
    {
        data = 2;
        other = 3;
        result = data * other;
        printShortLine(result);
    }
}

/* goodB2G1: the input is range checked before the arithmetic */
static void goodB2G1(void)
{
    short data = 0;
    short other = 0;
    short result;
    fscanf(stdin, "%hd", &data);
    fscanf(stdin, "%hd", &other);
    if (data > -sqrt(SHRT_MAX) && data < sqrt(SHRT_MAX) && other > -sqrt(SHRT_MAX) && other < sqrt(SHRT_MAX))
    {
        result = data * other;
        printShortLine(result);
    }
    else
    {
        printLine("data value is too large to perform arithmetic safely.");
    }
}

/* goodB2G2: the input is range checked before the arithmetic */
static void goodB2G2(void)
{
    short data = 0;
    short other = 0;
    short result;
    int k;
    for (k = 0; k < 1; k++)
    {
        fscanf(stdin, "%hd", &data);
        fscanf(stdin, "%hd", &other);
        if (data > -sqrt(SHRT_MAX) && data < sqrt(SHRT_MAX) && other > -sqrt(SHRT_MAX) && other < sqrt(SHRT_MAX))
        {
            result = data * other;
            printShortLine(result);
        }
        else
        {
            printLine("data value is too large to perform arithmetic safely.");
        }
    }
}

void CWE190_mul_short_02_guarded_good(void)
{
    goodG2B1();
    goodG2B2();
    goodB2G1();
    goodB2G2();
}

int main(void)
{
    printLine("Calling good()...");
    CWE190_mul_short_02_guarded_good();
    printLine("Finished good()");
    printLine("Calling bad()...");
    CWE190_mul_short_02_guarded_bad();
    printLine("Finished bad()");
    return 0;
}
