#include "cms/errors.hpp"
