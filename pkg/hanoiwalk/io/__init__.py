#!/usr/bin/python

'''IO package'''
