#include "mcqc/laurent.hpp"
