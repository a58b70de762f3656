#include "fibcat/core.hpp"
