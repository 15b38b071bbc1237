#include "resliep/field.hpp"
int main(){return 0;}
