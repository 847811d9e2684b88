#include <stdio.h>

int print_int(int x) {
    printf("%d\n", x);
    return 0;
}

int print_str(const char* s) {
    printf("%s\n", s);
    return 0;
}
